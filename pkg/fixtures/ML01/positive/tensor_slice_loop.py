import tensorflow as tf

x = tf.ones((10, 10))
total = 0.0
for i in range(10):  # expect: ML01
    total += x[i, 0]
