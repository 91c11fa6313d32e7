import torch

torch.use_deterministic_algorithms(True)
net = torch.nn.Sequential()
optimizer = torch.optim.Adam(net.parameters(), lr=0.001)
