# Generated by Django 4.2.16 on 2026-10-19 09:12

from django.db import migrations, models
import django.utils.timezone


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='Run',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('command', models.CharField(max_length=32)),
                ('parameters', models.JSONField(default=dict)),
                ('input_digests', models.JSONField(default=dict)),
                ('version', models.CharField(max_length=32)),
                ('seed', models.CharField(blank=True, max_length=20)),
                ('started_at', models.DateTimeField(default=django.utils.timezone.now)),
                ('wall_clock', models.FloatField(null=True)),
                ('exit_status', models.IntegerField(null=True)),
                ('report', models.JSONField(null=True)),
            ],
            options={
                'ordering': ['-started_at'],
            },
        ),
    ]
