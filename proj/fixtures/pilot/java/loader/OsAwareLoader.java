package loader;

import java.security.AccessController;
import java.security.PrivilegedAction;

public final class OsAwareLoader {

    private OsAwareLoader() {}

    public static void init() {
        final String os = System.getProperty("os.name").toLowerCase();
        AccessController.doPrivileged((PrivilegedAction<Void>) () -> {
            if (os.contains("windows")) {
                try {
                    System.loadLibrary("pilotnative-win");
                } catch (UnsatisfiedLinkError e) {
                    System.loadLibrary("pilotnative-win-compat");
                }
            } else {
                System.loadLibrary("pilotnative");
            }
            return null;
        });
    }
}
