import torch
from torch import nn

torch.use_deterministic_algorithms(True)


class Scaled(nn.Linear):
    def forward(self, x):
        return super().forward(x) * 2
