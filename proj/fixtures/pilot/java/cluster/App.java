package cluster;

public final class App {

    public static void runCodec() {
        Engine.configure(3);
        Engine.start();
        long encoded = Engine.encodeFrame();
        long decoded = Engine.decodeFrame();
        Engine.flushBuffers();
        Engine.resetCounters();
        long status = Engine.pollStatus();
        Engine.stop();
        System.out.println(encoded + " " + decoded + " " + status);
    }

    public static void runStore() {
        SmallCluster.open();
        long head = SmallCluster.read();
        SmallCluster.seek(128L);
        long tail = SmallCluster.write();
        long total = SmallCluster.size();
        SmallCluster.sync();
        SmallCluster.close();
        System.out.println(head + " " + tail + " " + total);
    }
}
