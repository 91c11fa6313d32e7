import torch

torch.use_deterministic_algorithms(True)
losses = []
for step in range(10):
    loss = criterion(step, step)
    losses.append(loss.item())
