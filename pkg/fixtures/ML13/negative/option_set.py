import torch

torch.use_deterministic_algorithms(True)
weights = torch.zeros(3)
