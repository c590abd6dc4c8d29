package loader;

public final class PlainLoader {

    static {
        System.loadLibrary("pilotnative");
    }

    private PlainLoader() {}

    static void touch() {}
}
