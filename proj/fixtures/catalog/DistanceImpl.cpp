#include <jni.h>

JNIEXPORT jfloat JNICALL Java_jni_distance
  (JNIEnv *env, jobject thisObject,
  jfloat time, jfloat speed,
  jfloat acceleration) {
    return time * speed;}
