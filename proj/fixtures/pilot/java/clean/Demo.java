package clean;

public final class Demo {

    public static void run() {
        boolean found = Helpers.checkedLookup();
        int total = Helpers.releasedChars("abcdef");
        Item item = new Item(11);
        int value = Helpers.cachedValue(item);
        Vec vec = new Vec(0.5f, 0.25f);
        Helpers.rescale(vec);
        Helpers.churnObjects(Item.class, 0L);
        System.out.println(found + " " + total + " " + value);
    }
}
