import torch

scores = torch.ones(2)
