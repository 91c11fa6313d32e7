import torch
from torch import nn

torch.use_deterministic_algorithms(True)
model = nn.Sequential(nn.Linear(2, 2))
optimizer = torch.optim.Adam(model.parameters(), lr=0.01)
model.eval()  # expect: ML18
validate(model)
optimizer.step()
