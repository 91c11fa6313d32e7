from tensorflow import keras

for width in (8, 16, 32):
    model = keras.Sequential()  # expect: ML12
