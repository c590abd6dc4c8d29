#include <jni.h>

static jfieldID f_count;
static jfieldID f_min;
static jfieldID f_max;

static int bind_stats_ids(JNIEnv *env)
{
    jclass statsCls = (*env)->FindClass(env, "loader/Stats");
    if (statsCls == NULL) {
        return 0;
    }
    f_count = (*env)->GetFieldID(env, statsCls, "count", "I");
    if (f_count == NULL) {
        return 0;
    }
    f_min = (*env)->GetFieldID(env, statsCls, "min", "I");
    if (f_min == NULL) {
        return 0;
    }
    f_max = (*env)->GetFieldID(env, statsCls, "max", "I");
    if (f_max == NULL) {
        return 0;
    }
    return 1;
}

JNIEXPORT jint JNICALL
Java_loader_NativeOps_readTriple(JNIEnv *env, jclass cls, jobject box)
{
    jclass boxCls = (*env)->GetObjectClass(env, box);
    if (boxCls == NULL) {
        return 0;
    }
    jmethodID mx = (*env)->GetMethodID(env, boxCls, "x", "()I");
    if (mx == NULL) {
        return 0;
    }
    jmethodID my = (*env)->GetMethodID(env, boxCls, "y", "()I");
    if (my == NULL) {
        return 0;
    }
    jmethodID mz = (*env)->GetMethodID(env, boxCls, "z", "()I");
    if (mz == NULL) {
        return 0;
    }
    jint total = 0;
    total += (*env)->CallIntMethod(env, box, mx);
    total += (*env)->CallIntMethod(env, box, my);
    total += (*env)->CallIntMethod(env, box, mz);
    return total;
}

JNIEXPORT jint JNICALL
Java_loader_NativeOps_sumStats(JNIEnv *env, jclass cls, jobject stats)
{
    if (f_count == NULL && !bind_stats_ids(env)) {
        return 0;
    }
    jint count = (*env)->GetIntField(env, stats, f_count);
    jint lo = (*env)->GetIntField(env, stats, f_min);
    jint hi = (*env)->GetIntField(env, stats, f_max);
    return count + lo + hi;
}
