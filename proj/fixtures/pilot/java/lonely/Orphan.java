package lonely;

public final class Orphan {

    private Orphan() {}

    // Bound to native code, but nothing on the Java side calls it anymore.
    static native void unusedOp();
}
