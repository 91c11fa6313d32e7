import tensorflow as tf

a = tf.constant([0.0])
b = tf.concat([a, tf.ones((1,))], 0)
