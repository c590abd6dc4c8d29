#include <jni.h>

JNIEXPORT void JNICALL
Java_clean_Helpers_churnObjects(JNIEnv *env, jclass cls, jclass elemCls, jlong ctor)
{
    for (int i = 0; i < 64; i++) {
        jobject tmp = (*env)->NewObject(env, elemCls, (jmethodID) ctor);
        if (tmp == NULL) {
            break;
        }
        (*env)->DeleteLocalRef(env, tmp);
    }
}
