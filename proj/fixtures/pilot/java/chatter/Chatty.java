package chatter;

public final class Chatty {

    private Chatty() {}

    static native void ping(int value);

    // Sends each heartbeat field through its own native call instead of
    // batching them into one crossing.
    public static int heartbeat() {
        ping(1);
        ping(2);
        ping(3);
        ping(4);
        ping(5);
        ping(6);
        ping(7);
        ping(8);
        ping(9);
        return 9;
    }
}
