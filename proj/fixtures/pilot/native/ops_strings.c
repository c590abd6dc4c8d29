#include <jni.h>

JNIEXPORT jchar JNICALL
Java_loader_NativeOps_readChars(JNIEnv *env, jclass cls, jstring text)
{
    const jchar *chars = (*env)->GetStringChars(env, text, NULL);
    if (chars == NULL) {
        return 0;
    }
    return chars[0];
}
