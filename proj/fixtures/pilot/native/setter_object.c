#include <jni.h>

static jfieldID f_x;
static jfieldID f_y;
static jfieldID f_scale;

static int bind_vec_ids(JNIEnv *env)
{
    jclass vecCls = (*env)->FindClass(env, "clean/Vec");
    if (vecCls == NULL) {
        return 0;
    }
    f_x = (*env)->GetFieldID(env, vecCls, "x", "F");
    if (f_x == NULL) {
        return 0;
    }
    f_y = (*env)->GetFieldID(env, vecCls, "y", "F");
    if (f_y == NULL) {
        return 0;
    }
    f_scale = (*env)->GetFieldID(env, vecCls, "scale", "F");
    if (f_scale == NULL) {
        return 0;
    }
    return 1;
}

JNIEXPORT void JNICALL
Java_clean_Helpers_rescale(JNIEnv *env, jclass cls, jobject vec)
{
    if (f_x == NULL && !bind_vec_ids(env)) {
        return;
    }
    jfloat x = (*env)->GetFloatField(env, vec, f_x);
    jfloat y = (*env)->GetFloatField(env, vec, f_y);
    jfloat s = (*env)->GetFloatField(env, vec, f_scale);
    (*env)->SetFloatField(env, vec, f_scale, s * (x + y));
}
