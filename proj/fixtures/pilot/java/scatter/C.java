package scatter;

public final class C {

    private C() {}

    static native long readEntry();

    static native void writeEntry(long value);
}
