package loader;

public class Box {
    private final int vx;
    private final int vy;
    private final int vz;

    public Box(int vx, int vy, int vz) {
        this.vx = vx;
        this.vy = vy;
        this.vz = vz;
    }

    public int x() { return vx; }

    public int y() { return vy; }

    public int z() { return vz; }
}
