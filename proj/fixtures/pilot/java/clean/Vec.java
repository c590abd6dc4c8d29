package clean;

public class Vec {
    float x;
    float y;
    float scale;

    public Vec(float x, float y) {
        this.x = x;
        this.y = y;
        this.scale = 1.0f;
    }
}
