#include <jni.h>
#include <stdlib.h>

void trainFromSamples(JNIEnv *env, jintArray sampleSizes)
{
    jsize num_samples = (*env)->GetArrayLength(env, sampleSizes);
    jint *sample_sizes_array = (*env)->GetIntArrayElements(env, sampleSizes, 0);
    size_t *samples_sizes = malloc(sizeof(size_t) * num_samples);
    if (!samples_sizes) {
        jclass eClass = (*env)->FindClass(env, "Ljava/lang/OutOfMemoryError;");
       (*env)->ThrowNew(env, eClass, "native heap");
    }
    for (int i = 0; i < num_samples; i++) {
        samples_sizes[i] = sample_sizes_array[i];
    }
   (*env)->ReleaseIntArrayElements(env, sampleSizes, sample_sizes_array, 0);
}
