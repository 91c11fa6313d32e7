import pandas as pd
import numpy as np

df = pd.DataFrame({"a": [1.0, np.nan]})
mask = df == np.nan  # expect: ML02
