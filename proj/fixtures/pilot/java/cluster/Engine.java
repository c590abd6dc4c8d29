package cluster;

/**
 * Every native entry point of the codec lives here, which makes this class
 * the single funnel for all JNI traffic.
 */
public final class Engine {

    private Engine() {}

    static native void configure(int level);

    static native void start();

    static native void stop();

    static native long encodeFrame();

    static native long decodeFrame();

    static native void flushBuffers();

    static native void resetCounters();

    static native long pollStatus();
}
