#include <jni.h>

static long g_pings;

JNIEXPORT void JNICALL
Java_chatter_Chatty_ping(JNIEnv *env, jclass cls, jint value)
{
    g_pings += value;
}
