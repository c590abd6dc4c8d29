#include <jni.h>

JNIEXPORT jboolean JNICALL
Java_clean_Helpers_checkedLookup(JNIEnv *env, jclass cls)
{
    jclass list = (*env)->FindClass(env, "java/util/ArrayList");
    if (list == NULL) {
        return JNI_FALSE;
    }
    return JNI_TRUE;
}
