#include <jni.h>

int sumVal (JNIEnv* env,jobject obj,jobject allVal){
   jclass cls=(*env)->GetObjectClass(env,allVal);
   jfieldID a=(*env)->GetFieldID(env,cls,"a","I");
   jfieldID b=(*env)->GetFieldID(env,cls,"b","I");
   jfieldID c=(*env)->GetFieldID(env,cls,"c","I");
   jint aval=(*env)->GetIntField(env,allVal,a);
   jint bval=(*env)->GetIntField(env,allVal,b);
   jint cval=(*env)->GetIntField(env,allVal,c);
   return aval + bval + cval;}
