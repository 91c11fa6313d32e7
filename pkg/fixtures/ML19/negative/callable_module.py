import torch
from torch import nn

torch.use_deterministic_algorithms(True)


class Net(nn.Module):
    def run(self, x):
        return self.layers(x)
