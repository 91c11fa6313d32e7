import tensorflow as tf

values = tf.constant([0.0])
for i in range(5):
    values = tf.concat([values, tf.ones((1,))], 0)  # expect: ML17
