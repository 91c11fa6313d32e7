from sklearn.cluster import KMeans

model = KMeans()  # expect: ML11,ML14
