package lonely;

public final class MissingImpl {

    private MissingImpl() {}

    // The native side of this declaration was deleted in a refactor.
    native int ghostOp(int x);
}
