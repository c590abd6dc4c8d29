package geom;

public final class Vector {

    private Vector() {}

    static native double norm(double x, double y, double pad);

    public static double unitDiagonal() {
        return norm(3.0, 4.0, 0.0);
    }
}
