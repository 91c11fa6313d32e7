import tensorflow as tf

a = tf.ones((1, 3))
b = tf.ones((5, 3))
c = a + b
