public class jni {

    private native float distance(float time, float speed, float acceleration);

    public static void main(String[] args) {
        jni calculator = new jni();
        float result = calculator.distance(1.5f, 2.0f, 0.5f);
        System.out.println(result);
    }
}
