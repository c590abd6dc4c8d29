#include <jni.h>

static jclass nioAccessClass;
static jclass bufferClass;
static jfieldID positionID;

staticvoid nativeClassInitBuffer(JNIEnv *_env){
 jclass nioAccessClassLocal= _env->FindClass("java/nio/NIOAccess");
 nioAccessClass=(jclass) _env->NewGlobalRef(nioAccessClassLocal);
 bufferClass=(jclass) _env->NewGlobalRef(bufferClassLocal);
 positionID= _env->GetFieldID(bufferClass, "position", "I");
}
