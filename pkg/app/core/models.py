from django.db import models
from django.utils import timezone


class Run(models.Model):
    """One command invocation and the report it produced"""
    command = models.CharField(max_length=32)
    parameters = models.JSONField(default=dict)
    input_digests = models.JSONField(default=dict)
    version = models.CharField(max_length=32)
    # u64 seeds overflow SQLite integers
    seed = models.CharField(max_length=20, blank=True)
    started_at = models.DateTimeField(default=timezone.now)
    wall_clock = models.FloatField(null=True)
    exit_status = models.IntegerField(null=True)
    report = models.JSONField(null=True)

    class Meta:
        ordering = ['-started_at']

    def __str__(self):
        return f'{self.command} run {self.pk}'

    def manifest(self):
        """The run manifest every report embeds"""
        return {
            'command': self.command,
            'parameters': self.parameters,
            'input_digests': self.input_digests,
            'version': self.version,
            'seed': int(self.seed) if self.seed != '' else None,
            'wall_clock': self.wall_clock,
        }
