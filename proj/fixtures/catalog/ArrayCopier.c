#include <jni.h>

void copyElements(JNIEnv *env, jobjectArray array, jsize count)
{
    jsize i;
    for (i=0; i < count; i++) {
        jobject element = (*env)->GetObjectArrayElement(env, array, i);
        if((*env)->ExceptionOccurred(env)) { break;}
        (void)element;
    }
}
