package clean;

public class Item {
    int value;

    public Item(int value) {
        this.value = value;
    }
}
