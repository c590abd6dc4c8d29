package loader;

/** Native helpers backing the pilot workload. Loading happens in the loaders. */
public final class NativeOps {

    private NativeOps() {}

    static native void warmCache();

    static native long lookupRun(Class<?> target);

    static native void fillCache(Class<?> elemCls, long ctor);

    static native char readChars(String text);

    static native int readTriple(Box box);

    static native int sumStats(Stats stats);
}
