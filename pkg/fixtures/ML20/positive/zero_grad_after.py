import torch
from torch import nn

torch.use_deterministic_algorithms(True)
model = nn.Sequential(nn.Linear(2, 2))
optimizer = torch.optim.SGD(model.parameters(), lr=0.1)
for batch, target in loader:
    loss = criterion(model(batch), target)
    loss.backward()  # expect: ML20
    optimizer.step()
    optimizer.zero_grad()
