value = None
flag = value is None
other = value == 3
