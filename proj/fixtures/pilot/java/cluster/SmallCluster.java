package cluster;

public final class SmallCluster {

    private SmallCluster() {}

    static native void open();

    static native void close();

    static native long read();

    static native long write();

    static native void seek(long offset);

    static native long size();

    static native void sync();
}
