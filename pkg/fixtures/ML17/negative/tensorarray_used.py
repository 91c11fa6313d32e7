import tensorflow as tf

ta = tf.TensorArray(tf.float32, size=5)
for i in range(5):
    ta = ta.write(i, float(i))
