results = {"model": "baseline"}
print(results)
