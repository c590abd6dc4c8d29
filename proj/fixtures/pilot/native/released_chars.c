#include <jni.h>

JNIEXPORT jint JNICALL
Java_clean_Helpers_releasedChars(JNIEnv *env, jclass cls, jstring text)
{
    const char *utf = (*env)->GetStringUTFChars(env, text, NULL);
    if (utf == NULL) {
        return -1;
    }
    jint total = 0;
    for (const char *p = utf; *p; p++) {
        total += (unsigned char) *p;
    }
    (*env)->ReleaseStringUTFChars(env, text, utf);
    return total;
}
