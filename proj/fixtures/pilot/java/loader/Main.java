package loader;

public final class Main {

    public static void main(String[] args) {
        PrivilegedLoader.init();
        NativeOps.warmCache();
        long handle = NativeOps.lookupRun(Runnable.class);
        NativeOps.fillCache(Box.class, handle);
        char first = NativeOps.readChars("pilot");
        Box box = new Box(1, 2, 3);
        int triple = NativeOps.readTriple(box);
        Stats stats = new Stats(10, -2, 7);
        int sum = NativeOps.sumStats(stats);
        System.out.println(first + " " + triple + " " + sum);
    }
}
