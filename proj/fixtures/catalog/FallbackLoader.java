public class FallbackLoader {

  public static synchronized Z3SolverContext create() {
    try { System.loadLibrary("z3"); System.loadLibrary("z3java");
    } catch (UnsatisfiedLinkError e1) {
      try {  System.loadLibrary("libz3");
             System.loadLibrary("libz3java");
      } catch (UnsatisfiedLinkError e2) { return null; }
    }
    return new Z3SolverContext();
  }
}
