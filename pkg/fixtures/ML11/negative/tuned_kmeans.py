from sklearn.cluster import KMeans

model = KMeans(n_clusters=8, random_state=0)
