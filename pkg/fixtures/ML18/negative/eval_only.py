import torch
from torch import nn

torch.use_deterministic_algorithms(True)
model = nn.Sequential(nn.Linear(2, 2))
model.eval()
predictions = model(batch)
