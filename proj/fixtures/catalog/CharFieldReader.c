#include <jni.h>

void readCharField(JNIEnv *env, jobject obj)
{
    jclass objectClass;
    jfieldID fieldID;
    jchar result = 0;
    objectClass= (*env)->GetObjectClass(env, obj);
    fieldID= (*env)->GetFieldID(env, objectClass, "charField", "C");
    result= (*env)->GetCharField(env, obj, fieldID);
    (void)result;
}
