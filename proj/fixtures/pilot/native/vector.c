#include <jni.h>
#include <math.h>

JNIEXPORT jdouble JNICALL
Java_geom_Vector_norm(JNIEnv *env, jclass cls, jdouble x, jdouble y, jdouble pad)
{
    return sqrt(x * x + y * y);
}
