package loader;

import java.security.AccessController;
import java.security.PrivilegedAction;

public final class FallbackLoader {

    private FallbackLoader() {}

    public static void init() {
        AccessController.doPrivileged((PrivilegedAction<Void>) () -> {
            try {
                System.loadLibrary("pilotnative");
            } catch (UnsatisfiedLinkError first) {
                try {
                    System.loadLibrary("pilotnative64");
                } catch (UnsatisfiedLinkError second) {
                    System.loadLibrary("pilotnative-compat");
                }
            }
            return null;
        });
    }
}
