#include <jni.h>

static jobject g_pool[32];

extern "C" {

JNIEXPORT void JNICALL
Java_loader_NativeOps_fillCache(JNIEnv *env, jclass, jclass elemCls, jlong ctor)
{
    for (int i = 0; i < 32; i++) {
        g_pool[i] = env->NewObject(elemCls, (jmethodID) ctor);
    }
}

}  // extern "C"
