#include <jni.h>

static long g_orphan_calls;

JNIEXPORT void JNICALL
Java_lonely_Orphan_unusedOp(JNIEnv *env, jclass cls)
{
    g_orphan_calls++;
}
