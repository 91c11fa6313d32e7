import tensorflow as tf

history = tf.constant([1.0])
step = 0
while step < 4:
    history = tf.stack([history, tf.ones((1,))])  # expect: ML17
    step += 1
