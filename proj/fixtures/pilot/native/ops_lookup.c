#include <jni.h>

static jclass g_hashMapClass;

JNIEXPORT void JNICALL
Java_loader_NativeOps_warmCache(JNIEnv *env, jclass cls)
{
    g_hashMapClass = (*env)->FindClass(env, "java/util/HashMap");
}

JNIEXPORT jlong JNICALL
Java_loader_NativeOps_lookupRun(JNIEnv *env, jclass cls, jclass target)
{
    jmethodID mid = (*env)->GetMethodID(env, target, "run", "()V");
    return (jlong) mid;
}
