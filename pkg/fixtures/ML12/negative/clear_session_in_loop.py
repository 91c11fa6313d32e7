from tensorflow import keras
from tensorflow.keras import backend

for width in (8, 16, 32):
    backend.clear_session()
    model = keras.Sequential()
