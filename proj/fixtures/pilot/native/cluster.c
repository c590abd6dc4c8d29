#include <jni.h>

static struct {
    int level;
    int running;
    long frames;
} g_engine;

static struct {
    int open;
    long position;
    long blocks;
} g_store;

JNIEXPORT void JNICALL
Java_cluster_Engine_configure(JNIEnv *env, jclass cls, jint level)
{
    g_engine.level = level;
}

JNIEXPORT void JNICALL
Java_cluster_Engine_start(JNIEnv *env, jclass cls)
{
    g_engine.running = 1;
}

JNIEXPORT void JNICALL
Java_cluster_Engine_stop(JNIEnv *env, jclass cls)
{
    g_engine.running = 0;
}

JNIEXPORT jlong JNICALL
Java_cluster_Engine_encodeFrame(JNIEnv *env, jclass cls)
{
    g_engine.frames++;
    return g_engine.frames;
}

JNIEXPORT jlong JNICALL
Java_cluster_Engine_decodeFrame(JNIEnv *env, jclass cls)
{
    return g_engine.frames;
}

JNIEXPORT void JNICALL
Java_cluster_Engine_flushBuffers(JNIEnv *env, jclass cls)
{
    g_engine.frames = 0;
}

JNIEXPORT void JNICALL
Java_cluster_Engine_resetCounters(JNIEnv *env, jclass cls)
{
    g_engine.frames = 0;
    g_engine.level = 0;
}

JNIEXPORT jlong JNICALL
Java_cluster_Engine_pollStatus(JNIEnv *env, jclass cls)
{
    return g_engine.running ? g_engine.frames : -1;
}

JNIEXPORT void JNICALL
Java_cluster_SmallCluster_open(JNIEnv *env, jclass cls)
{
    g_store.open = 1;
}

JNIEXPORT void JNICALL
Java_cluster_SmallCluster_close(JNIEnv *env, jclass cls)
{
    g_store.open = 0;
}

JNIEXPORT jlong JNICALL
Java_cluster_SmallCluster_read(JNIEnv *env, jclass cls)
{
    return g_store.position;
}

JNIEXPORT jlong JNICALL
Java_cluster_SmallCluster_write(JNIEnv *env, jclass cls)
{
    g_store.blocks++;
    return g_store.blocks;
}

JNIEXPORT void JNICALL
Java_cluster_SmallCluster_seek(JNIEnv *env, jclass cls, jlong offset)
{
    g_store.position = offset;
}

JNIEXPORT jlong JNICALL
Java_cluster_SmallCluster_size(JNIEnv *env, jclass cls)
{
    return g_store.blocks * 512;
}

JNIEXPORT void JNICALL
Java_cluster_SmallCluster_sync(JNIEnv *env, jclass cls)
{
    g_store.position = 0;
}
