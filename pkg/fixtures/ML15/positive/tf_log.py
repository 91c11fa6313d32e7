import tensorflow as tf

x = tf.ones((4,))
y = tf.log(x)  # expect: ML15
