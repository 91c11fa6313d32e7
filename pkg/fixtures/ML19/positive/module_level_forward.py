import torch

torch.use_deterministic_algorithms(True)
output = policy.forward(observation)  # expect: ML19
