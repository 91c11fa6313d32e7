import torch
from torch import nn

torch.use_deterministic_algorithms(True)
model = nn.Sequential(nn.Linear(2, 2), nn.Dropout(0.5))
optimizer = torch.optim.SGD(model.parameters(), lr=0.1)
model.eval()
validate(model)
model.train()
loss = criterion(model(batch), target)
loss.backward()
optimizer.step()
