import torch

torch.use_deterministic_algorithms(True)
net = torch.nn.Sequential()
optimizer = torch.optim.SGD(net.parameters())  # expect: ML11
