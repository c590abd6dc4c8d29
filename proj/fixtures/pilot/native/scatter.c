#include <jni.h>

static int g_session;
static int g_batch;
static long g_entry;

JNIEXPORT void JNICALL
Java_scatter_A_openSession(JNIEnv *env, jclass cls)
{
    g_session = 1;
}

JNIEXPORT void JNICALL
Java_scatter_A_closeSession(JNIEnv *env, jclass cls)
{
    g_session = 0;
}

JNIEXPORT void JNICALL
Java_scatter_B_beginBatch(JNIEnv *env, jclass cls)
{
    g_batch++;
}

JNIEXPORT void JNICALL
Java_scatter_B_endBatch(JNIEnv *env, jclass cls)
{
    g_batch--;
}

JNIEXPORT jlong JNICALL
Java_scatter_C_readEntry(JNIEnv *env, jclass cls)
{
    return g_entry;
}

JNIEXPORT void JNICALL
Java_scatter_C_writeEntry(JNIEnv *env, jclass cls, jlong value)
{
    g_entry = value;
}
