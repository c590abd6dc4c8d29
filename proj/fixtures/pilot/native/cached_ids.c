#include <jni.h>

static jfieldID g_value_field;

JNIEXPORT jint JNICALL
Java_clean_Helpers_cachedValue(JNIEnv *env, jclass cls, jobject item)
{
    if (g_value_field == NULL) {
        jclass itemCls = (*env)->GetObjectClass(env, item);
        if (itemCls == NULL) {
            return 0;
        }
        g_value_field = (*env)->GetFieldID(env, itemCls, "value", "I");
        if (g_value_field == NULL) {
            return 0;
        }
    }
    return (*env)->GetIntField(env, item, g_value_field);
}
