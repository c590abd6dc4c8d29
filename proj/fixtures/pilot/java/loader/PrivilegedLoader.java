package loader;

import java.security.AccessController;
import java.security.PrivilegedAction;

public final class PrivilegedLoader {

    private PrivilegedLoader() {}

    public static void init() {
        AccessController.doPrivileged(new PrivilegedAction<Void>() {
            @Override
            public Void run() {
                System.loadLibrary("pilotnative");
                return null;
            }
        });
    }
}
