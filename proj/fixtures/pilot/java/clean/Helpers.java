package clean;

/** Native helpers written the careful way; the detectors should stay quiet. */
public final class Helpers {

    private Helpers() {}

    static native boolean checkedLookup();

    static native int releasedChars(String text);

    static native int cachedValue(Item item);

    static native void rescale(Vec vec);

    static native void churnObjects(Class<?> elemCls, long ctor);
}
