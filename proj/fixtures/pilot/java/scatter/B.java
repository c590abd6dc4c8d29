package scatter;

public final class B {

    private B() {}

    static native void beginBatch();

    static native void endBatch();
}
