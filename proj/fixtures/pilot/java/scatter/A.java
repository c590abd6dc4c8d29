package scatter;

public final class A {

    private A() {}

    static native void openSession();

    static native void closeSession();
}
