package scatter;

public final class Caller {

    public static void roundTrip() {
        A.openSession();
        B.beginBatch();
        C.writeEntry(42L);
        long stored = C.readEntry();
        B.endBatch();
        A.closeSession();
        System.out.println(stored);
    }
}
