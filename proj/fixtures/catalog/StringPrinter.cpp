#include <jni.h>
#include <cstdio>

void printString(JNIEnv *env, jstring javaString)
{
    const char *str;
    jboolean isCopy;
    str = env->GetStringUTFChars(javaString, &isCopy);
    std::printf("%s\n", str);
}
