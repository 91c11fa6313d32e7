import tensorflow as tf

a = tf.ones((1, 3))
b = tf.ones((5, 3))
tiled = tf.tile(a, [5, 1])  # expect: ML16
c = tiled + b
