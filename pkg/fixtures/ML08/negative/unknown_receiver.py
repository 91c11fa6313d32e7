class Config:
    values = (1, 2)


config = Config()
pair = config.values
