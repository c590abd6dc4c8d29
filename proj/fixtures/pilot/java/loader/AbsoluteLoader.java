package loader;

import java.security.AccessController;
import java.security.PrivilegedAction;

public final class AbsoluteLoader {

    private AbsoluteLoader() {}

    public static void init() {
        AccessController.doPrivileged((PrivilegedAction<Void>) () -> {
            System.load("/opt/pilot/libpilotnative.so");
            return null;
        });
    }
}
