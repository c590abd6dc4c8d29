package loader;

public class Stats {
    int count;
    int min;
    int max;

    public Stats(int count, int min, int max) {
        this.count = count;
        this.min = min;
        this.max = max;
    }
}
